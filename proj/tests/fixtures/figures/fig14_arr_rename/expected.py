def f_gold ( list1 , list2 , m , n , k ) :
    sorted1 = [ 0 ] * ( m + n )
    i = 0
    j = 0
    d = 0
    while ( i < m and j < n ) :
        if ( list1 [ i ] < list2 [ j ] ) :
            sorted1 [ d ] = list1 [ i ]
            i += 1
        else :
            sorted1 [ d ] = list2 [ j ]
            j += 1
        d += 1
    while ( i < m ) :
        sorted1 [ d ] = list1 [ i ]
        d += 1
        i += 1
    while ( j < n ) :
        sorted1 [ d ] = list2 [ j ]
        d += 1
        j += 1
    return sorted1 [ k - 1 ]
