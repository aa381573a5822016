def f_gold ( arr , n ) :
    result = 15
    i = 0
    while i < n :
        result += arr [ i ]
        i += 1
    if result % 3 == 0 :
        result = result // 2
    else :
        result = result + 1
    return result


if __name__ == '__main__' :
    param = [ ( [ 15 , 2 , 3 ] , 3 , ) ]
    for p in param :
        print ( f_gold ( * p ) )
